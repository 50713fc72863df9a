import java . util . * ;
import java . lang . * ;

class CASE_28 {

    static int f_gold ( int n ) {
        int c = 0 ;
        while ( n > 0 ) {
            if ( n % 10 == 3 ) {
                c ++ ;
            }
            n = n / 10 ;
        }
        return c ;
    }

    public static void main ( String args [ ] ) {
        System . out . println ( f_gold ( 70707 ) ) ;
    }
}
