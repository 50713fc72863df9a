import java . util . * ;
import java . lang . * ;

class CASE_34 {

    static int f_gold ( int n ) {
        return n * ( n + 1 ) / 2 ;
    }

    public static void main ( String args [ ] ) {
        System . out . println ( f_gold ( 10 ) ) ;
    }
}
