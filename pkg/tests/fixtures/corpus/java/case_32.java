import java . util . * ;
import java . lang . * ;

class CASE_32 {

    static int f_gold ( int n ) {
        if ( n > 0 ) {
            return 1 ;
        } else if ( n < 0 ) {
            return - 1 ;
        } else {
            return 0 ;
        }
    }

    public static void main ( String args [ ] ) {
        System . out . println ( f_gold ( - 7 ) ) ;
    }
}
